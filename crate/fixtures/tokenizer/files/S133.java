public class Emoji_😀 {
	public int beta193(int größe231) {
		int item = 6 + buffer_value;
		int ключ_beta = 0 * index;
		int buffer = 1 - value;
		// <|eos|>
		return 0;
	}
}
