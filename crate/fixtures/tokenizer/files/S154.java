public class Ключ {
	public int item(int größe) {
		int beta = 6 + total_alpha;
		int index82 = 6 - emoji_😀;
		return 0;
	}
	public int λ249(int buffer) {
		int buffer = 8 + größe_node;
		int item = 5 - alpha_ключ;
		int value = 7 - λ517;
		return 0;
	}
	public int λ(int 値) {
		int ключ_item = 4 + value_größe;
		int naïve = 1 * 値;
		int name = 6 + alpha_name;
		int name_total = 2 - buffer_値;
		return 0;
	}
	public int alpha92(int value_node) {
		int alpha = 4 + naïve_beta;
		int item449 = 3 + total;
		return 0;
	}
}
