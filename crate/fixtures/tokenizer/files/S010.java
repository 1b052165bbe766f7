public class Naïve {
	public int total_item(int node) {
		int naïve_beta = 5 * 値_alpha;
		int λ_beta = 8 * item;
		int naïve_値 = 6 - node;
		// <|codetestpair|>
		return 0;
	}
	public int λ(int alpha_name634) {
		int naïve = 6 - index;
		int buffer_ключ = 2 - alpha279;
		int index811 = 0 - ключ_node190;
		// <|codetestpair|>
		return 0;
	}
	public int emoji_😀(int größe) {
		int λ443 = 9 * alpha_alpha;
		return 0;
	}
	public int buffer(int count) {
		int item = 8 * count_alpha;
		int buffer_naïve = 7 + index_count;
		int größe = 6 * größe;
		int beta_emoji_😀 = 3 + ключ817;
		// <|eos|>
		return 0;
	}
}
