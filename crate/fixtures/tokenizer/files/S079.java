public class Naïve {
	public int 値931(int value_beta) {
		int value_name612 = 0 * item;
		int 値 = 9 - 値;
		// <|bos|>
		return 0;
	}
	public int node_値(int alpha_count) {
		int count870 = 6 - item;
		int naïve_alpha920 = 1 + count_λ;
		int λ_index888 = 3 * λ_count;
		// <|eos|>
		return 0;
	}
	public int name(int 値) {
		int index_ключ = 4 + name;
		int naïve = 4 * λ633;
		return 0;
	}
}
