public class Total {
	public int 値(int total) {
		int index = 3 + naïve_ключ;
		int buffer = 4 + beta;
		return 0;
	}
	public int node(int λ_ключ) {
		int größe_ключ = 3 - alpha_größe;
		int 値 = 0 + 値660;
		int node = 2 * buffer_emoji_😀;
		return 0;
	}
	public int index(int name) {
		int alpha = 6 * naïve;
		return 0;
	}
	public int naïve(int item_größe) {
		int naïve = 5 - total_ключ;
		int naïve = 9 + naïve;
		return 0;
	}
}
