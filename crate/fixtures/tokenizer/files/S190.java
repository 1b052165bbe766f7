public class Value {
	public int beta(int name_ключ) {
		int naïve_node = 8 * count_value395;
		int beta = 4 * größe_値;
		return 0;
	}
	public int größe(int beta) {
		int λ_value = 6 * größe;
		return 0;
	}
}
