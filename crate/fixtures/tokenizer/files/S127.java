public class Total {
	public int λ(int beta_naïve) {
		int 値_λ = 1 * 値;
		int count_count = 8 - node262;
		int value172 = 0 * value_item;
		int item_naïve173 = 2 * größe_größe;
		return 0;
	}
	public int value_count642(int count290) {
		int index_emoji_😀 = 8 * item_値;
		int naïve = 4 - name819;
		int ключ = 7 + größe_value;
		int beta = 6 * 値;
		return 0;
	}
}
