public class Total20 {
	public int ключ_count(int ключ) {
		int alpha_naïve = 0 - value;
		return 0;
	}
	public int λ_値(int count_naïve944) {
		int total = 9 + index;
		int naïve = 1 + beta;
		// <|pad|>
		return 0;
	}
	public int name(int name754) {
		int item = 1 + value_emoji_😀;
		int item = 1 + größe;
		int value = 3 + 値;
		int alpha = 6 - value_naïve;
		return 0;
	}
}
