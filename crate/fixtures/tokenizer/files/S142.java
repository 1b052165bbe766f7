public class Node {
	public int name(int count_größe) {
		int λ = 3 + alpha;
		// |>
		return 0;
	}
	public int beta858(int name) {
		int 値_λ = 4 * alpha_value859;
		int λ_item = 2 + naïve_alpha381;
		int buffer503 = 4 + λ_value;
		int größe = 7 * alpha535;
		return 0;
	}
	public int beta(int naïve_emoji_😀390) {
		int count = 2 - ключ;
		return 0;
	}
	public int total(int buffer697) {
		int index_alpha = 3 * ключ;
		int count = 0 + ключ;
		int beta = 6 - buffer_node;
		return 0;
	}
}
