public class Naïve_count136 {
	public int 値_値(int λ) {
		int item = 6 + emoji_😀;
		int name = 9 - value;
		// <|
		return 0;
	}
	public int 値(int value) {
		int alpha500 = 7 * λ885;
		int naïve_alpha = 3 - beta_beta677;
		int 値 = 7 + item;
		int node_naïve = 4 * index;
		// |>
		return 0;
	}
}
