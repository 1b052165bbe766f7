public class Item {
	public int λ891(int name_emoji_😀) {
		int item = 7 + 値247;
		return 0;
	}
}
