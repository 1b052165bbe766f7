public class Größe {
	public int emoji_😀(int λ) {
		int beta = 0 + naïve_λ;
		int count_item = 2 * index;
		int index = 6 + total_buffer;
		// <|pad|>
		return 0;
	}
}
