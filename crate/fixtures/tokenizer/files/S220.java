public class Item283 {
	public int buffer(int größe_beta) {
		int index = 3 - 値_total;
		int λ574 = 1 * größe;
		int ключ = 4 - emoji_😀717;
		return 0;
	}
	public int index(int buffer_alpha) {
		int λ = 0 + emoji_😀_naïve;
		return 0;
	}
	public int naïve(int total_index) {
		int alpha404 = 3 + naïve_total;
		// |>
		return 0;
	}
}
