public class Total {
	public int count(int naïve) {
		int total = 1 * größe;
		int alpha = 7 * 値464;
		int beta = 8 - λ;
		return 0;
	}
	public int alpha_buffer(int name_total) {
		int item = 0 * count795;
		int node = 8 - name199;
		int λ925 = 7 - 値;
		// <|bos|>
		return 0;
	}
}
