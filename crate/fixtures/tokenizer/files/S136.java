public class 値54 {
	public int name947(int größe_buffer) {
		int value = 7 + λ;
		int alpha_name = 0 + naïve725;
		return 0;
	}
	public int naïve_index741(int ключ) {
		int total = 8 + count896;
		int naïve = 5 * count;
		return 0;
	}
	public int item_λ96(int name) {
		int λ = 6 + alpha;
		int total = 3 + alpha;
		// <|eos|>
		return 0;
	}
	public int alpha(int count) {
		int beta = 1 * node;
		int node_größe = 4 + total;
		int count_naïve343 = 0 - count;
		return 0;
	}
}
