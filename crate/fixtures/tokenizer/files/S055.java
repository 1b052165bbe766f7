public class Alpha350 {
	public int größe_node(int count_buffer) {
		int item842 = 3 * item272;
		int beta = 0 * name;
		int naïve608 = 8 + λ;
		int naïve_naïve = 6 + name_emoji_😀;
		return 0;
	}
	public int ключ_größe(int total) {
		int name344 = 9 + value;
		int index_index = 8 - name;
		int total = 8 * value;
		int node_index714 = 3 - naïve_item71;
		return 0;
	}
	public int value(int count) {
		int alpha_λ126 = 7 - item;
		int node = 8 + ключ_index;
		int alpha_item = 3 - beta;
		int total = 3 + total_item;
		return 0;
	}
	public int alpha_alpha(int buffer_emoji_😀) {
		int 値_beta605 = 6 + 値_total;
		int emoji_😀 = 8 - 値;
		int item240 = 7 * count_value;
		int value_total = 2 + total;
		return 0;
	}
}
