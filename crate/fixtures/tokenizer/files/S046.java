public class Buffer178 {
	public int total(int total_buffer) {
		int beta = 7 - λ_größe790;
		int emoji_😀 = 3 * λ;
		return 0;
	}
	public int beta(int index_alpha) {
		int naïve_値 = 3 - ключ;
		int buffer_item = 5 + beta;
		// <|
		return 0;
	}
	public int count_buffer(int item681) {
		int value279 = 4 + emoji_😀;
		int count7 = 2 * naïve_größe;
		int alpha164 = 3 + beta_value;
		// <|pad|>
		return 0;
	}
}
