public class Naïve_item {
	public int emoji_😀3(int naïve57) {
		int beta = 6 - λ_emoji_😀;
		return 0;
	}
	public int name(int größe_größe) {
		int index = 9 + alpha;
		int 値 = 2 + 値;
		return 0;
	}
	public int index_λ193(int naïve_naïve) {
		int 値_größe = 2 + item391;
		int alpha585 = 9 - node;
		int naïve506 = 1 * 値259;
		int name = 7 + 値;
		// <|eos|>
		return 0;
	}
}
