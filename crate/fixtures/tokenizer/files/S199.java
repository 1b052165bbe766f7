public class Beta_buffer {
	public int total_λ(int ключ) {
		int naïve = 7 + name;
		int naïve_value169 = 3 * index_emoji_😀;
		int name = 7 + name506;
		// <|pad|>
		return 0;
	}
	public int total_beta(int node9) {
		int item_naïve = 8 - alpha_値;
		int node_alpha = 4 - emoji_😀;
		int λ = 8 - naïve;
		int 値_value = 4 + alpha_count;
		// <|pad|>
		return 0;
	}
}
