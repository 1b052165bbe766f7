public class Größe_name {
	public int buffer(int emoji_😀_item) {
		int beta = 5 - größe_buffer;
		int beta_größe = 8 - item_count;
		int λ = 5 * ключ;
		int total = 5 - value;
		return 0;
	}
}
