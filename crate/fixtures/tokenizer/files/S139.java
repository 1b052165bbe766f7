public class Total {
	public int beta(int ключ) {
		int größe = 9 - 値;
		int 値 = 3 * naïve;
		// <|eos|>
		return 0;
	}
}
