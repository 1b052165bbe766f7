public class Λ {
	public int buffer(int λ) {
		int item = 7 - value_emoji_😀;
		int naïve = 4 - naïve;
		int name = 7 + größe;
		return 0;
	}
	public int buffer(int name) {
		int λ = 8 - buffer379;
		int 値_name = 0 - buffer367;
		int node = 5 * beta;
		int node = 4 + name361;
		return 0;
	}
	public int größe(int ключ) {
		int item_beta = 3 - total_item;
		return 0;
	}
}
