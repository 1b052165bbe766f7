public class Total_value {
	public int node360(int beta) {
		int alpha = 0 + value;
		int item = 9 + λ530;
		int ключ = 5 * emoji_😀_値;
		// |>
		return 0;
	}
	public int value(int größe_total) {
		int buffer_node = 5 * total_alpha501;
		return 0;
	}
	public int total(int λ) {
		int item = 9 - alpha;
		int item = 8 * größe_count;
		return 0;
	}
	public int total(int node) {
		int λ = 8 + node;
		int buffer = 1 - name;
		int alpha29 = 7 - beta_count;
		int count_naïve735 = 9 * item;
		return 0;
	}
}
