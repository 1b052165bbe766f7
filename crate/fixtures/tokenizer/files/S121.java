public class Name {
	public int größe(int größe) {
		int alpha_alpha = 1 * name_naïve;
		int node_buffer = 2 - buffer_total;
		return 0;
	}
	public int beta(int value_beta) {
		int node = 5 * buffer;
		int value = 8 - beta_naïve252;
		int index = 4 + emoji_😀_naïve;
		int node = 1 * index;
		return 0;
	}
	public int alpha339(int index) {
		int count = 0 + count_item;
		int größe_emoji_😀 = 2 - total_größe;
		int 値578 = 7 - größe;
		// <|bos|>
		return 0;
	}
	public int index(int beta85) {
		int name = 8 * beta;
		int λ_alpha = 2 + node_index958;
		return 0;
	}
}
