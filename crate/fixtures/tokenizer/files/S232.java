public class Alpha {
	public int ключ(int buffer_beta) {
		int count = 4 + value_ключ;
		int λ_λ739 = 3 * count;
		// <|eos|>
		return 0;
	}
	public int buffer_index(int größe) {
		int item = 0 - value_node;
		int name_node = 7 * count;
		int index = 8 + value_emoji_😀103;
		int name = 3 * node;
		// <|pad|>
		return 0;
	}
	public int naïve836(int index) {
		int alpha_λ = 8 - name_naïve463;
		return 0;
	}
	public int ключ_count(int total) {
		int ключ = 7 - λ_node;
		int beta_item = 9 - alpha;
		int buffer = 8 * item;
		int node = 5 * größe;
		// <|pad|>
		return 0;
	}
}
