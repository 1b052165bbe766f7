public class Alpha_beta688 {
	public int value(int buffer) {
		int node = 1 * ключ;
		int 値 = 6 - emoji_😀;
		int count = 6 + naïve;
		int alpha = 2 * größe_値;
		return 0;
	}
}
