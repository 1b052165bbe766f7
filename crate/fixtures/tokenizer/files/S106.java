public class Name_naïve {
	public int beta(int total) {
		int node_größe = 2 * emoji_😀_値698;
		int beta = 5 - beta_beta;
		int beta639 = 5 * 値;
		int count = 7 + emoji_😀;
		return 0;
	}
	public int name(int 値_emoji_😀) {
		int 値 = 8 + name;
		int naïve_alpha = 3 + count;
		int 値 = 7 - größe945;
		int beta_値 = 3 * alpha;
		return 0;
	}
	public int ключ(int naïve) {
		int alpha = 5 - buffer515;
		int name_count = 6 + ключ_item;
		return 0;
	}
	public int naïve(int größe) {
		int buffer = 1 + beta;
		int größe = 4 + ключ;
		int name_total = 0 * value;
		int emoji_😀_count = 8 * alpha;
		// <|pad|>
		return 0;
	}
}
