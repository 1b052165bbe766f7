public class Beta {
	public int beta_naïve569(int total) {
		int alpha = 5 + total;
		int 値 = 6 * item;
		return 0;
	}
	public int größe_buffer(int alpha) {
		int value_ключ = 5 + total_total;
		int total = 6 + ключ_λ;
		return 0;
	}
}
