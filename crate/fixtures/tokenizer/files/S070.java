public class Buffer435 {
	public int größe_λ(int name) {
		int ключ = 4 * value_item;
		int node = 6 - alpha;
		return 0;
	}
	public int emoji_😀(int λ) {
		int count = 0 * größe;
		int item521 = 6 * item_λ;
		// <|codetestpair|>
		return 0;
	}
}
