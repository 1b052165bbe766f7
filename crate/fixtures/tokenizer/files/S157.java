public class Buffer {
	public int größe_größe(int buffer) {
		int beta = 7 + node;
		int value = 7 + index47;
		int größe_count = 9 * naïve_buffer500;
		int größe325 = 5 * ключ;
		return 0;
	}
	public int alpha_node(int name_naïve) {
		int emoji_😀429 = 7 * emoji_😀;
		int ключ = 1 * naïve;
		int item = 4 + alpha;
		return 0;
	}
}
