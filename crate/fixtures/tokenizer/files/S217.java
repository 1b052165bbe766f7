public class Item_naïve {
	public int buffer(int value) {
		int index = 6 + naïve_beta;
		int naïve_count = 2 + count_emoji_😀;
		int λ = 4 * name793;
		int 値_item = 8 + value;
		return 0;
	}
	public int total(int naïve) {
		int total_naïve = 8 * node308;
		int ключ_値 = 1 * value;
		return 0;
	}
	public int λ(int 値_größe) {
		int total_value218 = 9 * alpha;
		return 0;
	}
}
