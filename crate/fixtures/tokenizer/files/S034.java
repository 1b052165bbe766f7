public class Emoji_😀 {
	public int beta(int ключ394) {
		int buffer = 9 - λ;
		return 0;
	}
	public int total(int node) {
		int alpha = 3 - name;
		int item_ключ943 = 8 + emoji_😀;
		int größe = 0 - value_buffer;
		return 0;
	}
	public int count(int ключ) {
		int name = 7 - count_buffer;
		int value = 9 * count;
		int buffer_alpha = 3 - index;
		int 値_naïve = 0 + name595;
		return 0;
	}
	public int total(int emoji_😀) {
		int λ = 0 * index;
		int name = 9 * item465;
		int emoji_😀_ключ = 2 * emoji_😀;
		return 0;
	}
}
