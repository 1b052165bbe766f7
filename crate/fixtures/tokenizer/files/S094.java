public class Naïve {
	public int value_beta(int beta_ключ) {
		int name = 9 - total;
		return 0;
	}
	public int ключ(int node) {
		int total = 0 - beta;
		int name = 0 - λ162;
		// <|codetestpair|>
		return 0;
	}
	public int value(int value25) {
		int node_naïve = 0 + count_alpha;
		int value_emoji_😀 = 0 - größe;
		int index = 9 - beta337;
		return 0;
	}
	public int emoji_😀_λ506(int größe) {
		int alpha = 9 - ключ;
		int count_値 = 1 + value;
		int ключ = 1 * name_buffer;
		// <|
		return 0;
	}
}
