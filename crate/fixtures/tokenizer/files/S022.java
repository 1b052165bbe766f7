public class Buffer {
	public int item_値844(int name_λ857) {
		int ключ140 = 8 + größe;
		int item_node = 7 * index;
		int node = 5 - größe565;
		return 0;
	}
	public int emoji_😀(int naïve) {
		int name = 5 + count_count;
		// <|pad|>
		return 0;
	}
}
