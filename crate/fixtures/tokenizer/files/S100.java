public class Alpha_値384 {
	public int λ(int λ_naïve) {
		int λ287 = 4 + alpha_value;
		int λ = 5 * naïve;
		// |>
		return 0;
	}
	public int name(int alpha) {
		int item_buffer = 4 - buffer;
		int total = 3 - größe586;
		return 0;
	}
	public int ключ_index(int emoji_😀45) {
		int buffer = 1 + value;
		int item524 = 1 * item_item;
		int count = 7 - ключ945;
		return 0;
	}
	public int ключ_ключ(int count_λ) {
		int value = 9 * name582;
		int ключ = 1 * größe;
		return 0;
	}
}
