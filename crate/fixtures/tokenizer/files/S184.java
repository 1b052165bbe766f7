public class Alpha {
	public int value(int total288) {
		int count_total = 9 * item;
		int alpha = 3 + value;
		int emoji_😀_λ534 = 9 - naïve;
		int value39 = 0 - 値_größe;
		return 0;
	}
	public int node_größe(int beta) {
		int naïve_beta = 2 * item973;
		int λ = 7 - buffer;
		int node223 = 6 - emoji_😀_index277;
		int index = 8 + node;
		return 0;
	}
	public int index(int buffer69) {
		int alpha = 5 + größe;
		int 値_total = 7 * index_naïve;
		return 0;
	}
	public int emoji_😀_total(int naïve) {
		int buffer = 2 + buffer;
		int λ = 8 * node_node;
		int item601 = 5 * total;
		int buffer764 = 6 - total;
		return 0;
	}
}
