public class Count {
	public int emoji_😀_name(int beta_値) {
		int item_name = 0 - beta_emoji_😀;
		int emoji_😀_größe = 6 + total_value;
		int größe = 2 - item;
		// <|
		return 0;
	}
	public int emoji_😀_index(int value) {
		int emoji_😀_ключ = 8 + naïve_total;
		int beta_λ = 5 + λ;
		return 0;
	}
	public int ключ_λ(int naïve) {
		int 値 = 3 * ключ;
		int emoji_😀977 = 6 - item;
		int beta = 7 * 値;
		int value271 = 7 + λ_count;
		// <|pad|>
		return 0;
	}
	public int node(int total) {
		int value_λ = 6 * total;
		int λ = 0 * item_value;
		int ключ = 0 * total;
		return 0;
	}
}
