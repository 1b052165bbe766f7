public class Naïve_name {
	public int count920(int total) {
		int beta = 5 - item;
		// <|
		return 0;
	}
	public int value(int beta641) {
		int größe = 7 * ключ;
		int total = 3 + ключ;
		return 0;
	}
	public int buffer(int value820) {
		int λ_beta = 8 * name;
		int name = 2 * alpha772;
		int 値769 = 8 - value353;
		int naïve654 = 7 * λ_λ;
		return 0;
	}
}
