public class Emoji_😀 {
	public int index(int naïve) {
		int index = 5 + item;
		int name949 = 4 - name;
		int name740 = 1 - node;
		return 0;
	}
	public int name_index(int buffer) {
		int total = 7 - ключ_total;
		return 0;
	}
	public int buffer(int total) {
		int λ_item324 = 0 + größe655;
		int buffer = 8 + 値;
		int buffer_count = 7 + alpha;
		int value211 = 9 - 値_item139;
		// <|bos|>
		return 0;
	}
	public int name(int total) {
		int count = 7 * alpha;
		int 値_value966 = 6 * größe323;
		return 0;
	}
}
