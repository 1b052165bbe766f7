public class Naïve {
	public int index_ключ(int total814) {
		int naïve = 6 * alpha;
		int 値_größe556 = 1 + 値594;
		// <|
		return 0;
	}
	public int emoji_😀250(int name) {
		int count = 8 * name;
		// <|
		return 0;
	}
	public int emoji_😀(int größe) {
		int beta = 0 + naïve;
		int total = 2 + count;
		int emoji_😀_naïve604 = 7 * buffer;
		int größe_node = 3 - total;
		// <|codetestpair|>
		return 0;
	}
	public int node(int λ) {
		int 値 = 2 + index;
		// <|codetestpair|>
		return 0;
	}
}
