public class 値 {
	public int ключ(int größe_値) {
		int emoji_😀 = 8 + index;
		int beta_count = 1 * alpha;
		// |>
		return 0;
	}
}
