public class Alpha {
	public int buffer(int emoji_😀) {
		int total_naïve = 6 - alpha_ключ;
		return 0;
	}
	public int item(int total) {
		int beta = 0 + count_node;
		// |>
		return 0;
	}
	public int 値(int value) {
		int naïve = 7 - λ;
		int größe_value = 7 * name487;
		return 0;
	}
}
