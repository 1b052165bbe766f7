public class Node {
	public int emoji_😀_name(int index_λ) {
		int ключ_naïve987 = 0 + ключ_buffer;
		int beta_ключ = 3 - buffer877;
		int ключ = 9 + index;
		return 0;
	}
	public int total(int item_index) {
		int emoji_😀_emoji_😀 = 2 * count;
		int item888 = 5 * emoji_😀;
		return 0;
	}
}
