public class Größe_node162 {
	public int name(int name681) {
		int beta = 4 + λ;
		int emoji_😀 = 6 - 値_alpha;
		int index = 4 + buffer644;
		int alpha = 4 + 値;
		// <|codetestpair|>
		return 0;
	}
	public int λ(int index_buffer) {
		int ключ = 5 - value_total;
		int λ = 8 * naïve_ключ;
		int alpha_größe922 = 3 - emoji_😀;
		int naïve = 2 * emoji_😀;
		return 0;
	}
}
