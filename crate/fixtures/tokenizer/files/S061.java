public class Name {
	public int naïve(int 値_naïve) {
		int ключ = 2 * ключ_ключ604;
		int node = 1 + node_node;
		int value36 = 5 * naïve_node;
		return 0;
	}
	public int total_count(int größe_value) {
		int λ = 7 - total_index;
		return 0;
	}
	public int beta_value(int λ_emoji_😀) {
		int item = 3 + name_index;
		return 0;
	}
	public int node(int 値) {
		int naïve55 = 1 * item;
		int größe_buffer = 9 - naïve;
		int λ_alpha = 3 + 値;
		int beta = 4 - value_node;
		return 0;
	}
}
