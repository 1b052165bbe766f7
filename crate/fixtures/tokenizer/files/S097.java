public class Count {
	public int alpha_value640(int alpha) {
		int count_item120 = 5 + 値601;
		int item = 9 - count;
		int node291 = 0 * beta_count;
		int item_node = 3 * λ;
		// <|bos|>
		return 0;
	}
	public int item_ключ(int name_value653) {
		int 値655 = 6 + buffer;
		// <|
		return 0;
	}
	public int 値_naïve(int ключ) {
		int count = 8 * naïve_alpha;
		int name = 8 - naïve_größe;
		return 0;
	}
}
