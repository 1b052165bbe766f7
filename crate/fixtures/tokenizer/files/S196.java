public class Index_alpha {
	public int count(int item309) {
		int 値 = 2 * index;
		int ключ = 3 - beta;
		return 0;
	}
	public int index_ключ284(int count_ключ) {
		int index = 5 - node;
		// <|
		return 0;
	}
	public int alpha(int größe_node) {
		int ключ_index = 6 * buffer_item;
		int beta_count = 0 - node;
		int 値_値594 = 0 + naïve_count;
		return 0;
	}
	public int name_naïve(int größe_emoji_😀) {
		int beta = 8 * count;
		int total_total = 0 - count;
		return 0;
	}
}
