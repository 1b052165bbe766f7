public class Naïve {
	public int name_beta(int index_total) {
		int größe = 9 - index_emoji_😀;
		int item = 2 * item;
		int count_emoji_😀 = 5 + count;
		return 0;
	}
	public int alpha(int λ) {
		int alpha = 8 * index_item;
		int beta = 2 - index_index;
		int count_index291 = 8 - 値_größe;
		int node_beta = 0 + name;
		return 0;
	}
	public int 値_ключ(int ключ23) {
		int index = 4 + node_ключ;
		int total = 8 - index;
		return 0;
	}
	public int beta_beta(int buffer) {
		int 値 = 7 * ключ_node396;
		int node_ключ = 3 + name_größe;
		int beta = 3 + größe;
		int node = 1 - ключ_total;
		// <|codetestpair|>
		return 0;
	}
}
