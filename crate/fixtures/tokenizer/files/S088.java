public class Beta_total {
	public int value437(int naïve) {
		int alpha = 0 * 値_name937;
		int total = 4 + buffer;
		int beta_emoji_😀 = 5 * 値_größe;
		int beta_beta776 = 4 - naïve;
		return 0;
	}
	public int emoji_😀_buffer(int alpha) {
		int λ_emoji_😀 = 9 - count;
		int index = 6 + name;
		int count = 1 - λ;
		int item = 9 + 値_name910;
		return 0;
	}
	public int alpha(int buffer) {
		int 値_index = 8 + index781;
		int ключ = 9 - count;
		int name_node = 6 + buffer_item;
		int emoji_😀_index = 0 - naïve;
		return 0;
	}
}
