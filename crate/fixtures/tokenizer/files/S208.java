public class Value623 {
	public int alpha(int alpha_item) {
		int value428 = 8 + größe_値;
		int 値 = 5 * naïve;
		int 値_alpha548 = 7 * item730;
		// <|eos|>
		return 0;
	}
	public int buffer(int count) {
		int name_item = 0 * name_name;
		// <|
		return 0;
	}
	public int beta_index(int total37) {
		int alpha = 5 + count;
		int buffer = 5 - beta;
		int größe = 2 + name_total;
		return 0;
	}
}
