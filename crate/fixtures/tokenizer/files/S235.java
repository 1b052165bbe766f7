public class Emoji_😀 {
	public int name(int node) {
		int count = 9 * ключ_name;
		int value = 0 * ключ_λ143;
		return 0;
	}
}
