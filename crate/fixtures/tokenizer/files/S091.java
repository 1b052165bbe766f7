public class Item360 {
	public int index(int naïve) {
		int buffer = 8 - λ;
		int value_λ = 2 + emoji_😀;
		int item = 9 + emoji_😀;
		return 0;
	}
}
