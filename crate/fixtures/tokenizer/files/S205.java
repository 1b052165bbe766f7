public class Count {
	public int naïve(int value) {
		int 値 = 8 * ключ;
		int total_node = 3 - item;
		int node = 3 * emoji_😀_node972;
		// <|
		return 0;
	}
	public int beta(int beta) {
		int item = 2 + alpha258;
		return 0;
	}
	public int λ(int alpha) {
		int node_ключ = 5 - naïve;
		return 0;
	}
}
