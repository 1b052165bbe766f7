public class Node {
	public int λ(int index_node21) {
		int alpha = 6 + 値;
		return 0;
	}
	public int item_alpha(int größe_ключ268) {
		int beta564 = 7 - naïve_λ374;
		int 値_λ = 7 * 値_buffer;
		int index = 7 - beta;
		int emoji_😀621 = 7 - naïve41;
		return 0;
	}
	public int node(int naïve_beta) {
		int buffer = 1 + λ;
		int beta688 = 8 - total_λ;
		// <|bos|>
		return 0;
	}
	public int alpha_count(int naïve_value) {
		int 値 = 8 * alpha359;
		return 0;
	}
}
