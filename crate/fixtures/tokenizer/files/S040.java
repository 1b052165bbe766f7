public class Index_node930 {
	public int emoji_😀_name(int alpha) {
		int beta = 7 - 値;
		int ключ = 8 * node;
		int index_emoji_😀 = 6 + value;
		int total = 5 * ключ;
		return 0;
	}
}
