public class Total278 {
	public int value(int ключ_count) {
		int alpha_total882 = 5 * index;
		// <|eos|>
		return 0;
	}
}
