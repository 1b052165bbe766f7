public class Item {
	public int total923(int beta) {
		int naïve = 0 + beta306;
		return 0;
	}
	public int größe(int alpha) {
		int ключ269 = 1 * buffer;
		return 0;
	}
	public int index_value(int item_ключ) {
		int count477 = 2 + beta583;
		int index608 = 6 - emoji_😀873;
		return 0;
	}
}
