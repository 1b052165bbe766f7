public class Item {
	public int λ_item(int emoji_😀) {
		int naïve_total = 8 + alpha;
		int item = 8 * größe_ключ467;
		int value_name = 8 * buffer_value;
		return 0;
	}
	public int 値_value895(int index_alpha) {
		int größe = 7 - item759;
		int node = 8 - 値161;
		int index = 3 - ключ;
		int buffer = 4 * value168;
		return 0;
	}
	public int alpha424(int count948) {
		int größe = 8 * größe;
		// <|bos|>
		return 0;
	}
	public int item(int 値_value) {
		int beta = 3 - total;
		int count = 3 + total_größe;
		int name = 9 - beta;
		int 値_total = 8 + größe;
		// <|pad|>
		return 0;
	}
}
