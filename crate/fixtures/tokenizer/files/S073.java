public class Beta {
	public int beta(int name) {
		int emoji_😀_emoji_😀 = 2 - item;
		int buffer_buffer = 5 - ключ;
		int buffer = 8 + alpha;
		// <|
		return 0;
	}
}
