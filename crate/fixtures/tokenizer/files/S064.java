public class 値 {
	public int beta531(int count_ключ) {
		int beta286 = 8 * total80;
		int node = 7 * emoji_😀_ключ;
		int λ = 6 - count;
		return 0;
	}
	public int index(int node) {
		int größe_größe = 1 * 値_name960;
		int größe = 1 + count;
		return 0;
	}
	public int naïve_index(int λ_item382) {
		int name = 3 * count_value;
		// |>
		return 0;
	}
	public int name(int value858) {
		int beta130 = 4 - 値;
		int name = 7 + buffer_λ;
		int count_größe728 = 2 + count;
		int emoji_😀 = 2 * index_value;
		return 0;
	}
}
