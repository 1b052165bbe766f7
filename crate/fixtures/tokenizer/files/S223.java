public class Item {
	public int buffer(int größe_ключ) {
		int emoji_😀 = 2 + 値_index;
		int emoji_😀 = 6 + λ;
		int value11 = 8 - index;
		return 0;
	}
}
