public class Emoji_😀 {
	public int node(int ключ_naïve) {
		int naïve352 = 9 - value;
		// <|codetestpair|>
		return 0;
	}
	public int naïve(int name_item312) {
		int item = 0 * größe560;
		int λ_emoji_😀 = 2 - node_buffer;
		int name = 0 + buffer;
		int beta = 1 * total_item;
		return 0;
	}
	public int value(int beta_größe786) {
		int total341 = 3 + item205;
		int buffer_値 = 2 * 値;
		// |>
		return 0;
	}
}
