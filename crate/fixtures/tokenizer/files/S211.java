public class Item_index {
	public int λ(int item) {
		int λ = 9 + ключ;
		int λ_alpha = 6 - emoji_😀_value;
		int node = 6 - naïve_buffer;
		int item_alpha = 1 + index;
		return 0;
	}
	public int total(int größe) {
		int count = 4 - größe;
		int naïve = 6 * naïve;
		int ключ_emoji_😀 = 8 + ключ;
		// <|bos|>
		return 0;
	}
	public int beta(int total63) {
		int 値173 = 9 * buffer;
		int name_値 = 0 * index957;
		int node = 6 * index;
		return 0;
	}
}
