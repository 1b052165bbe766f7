public class Index_größe {
	public int count_ключ(int emoji_😀326) {
		int 値 = 3 - ключ;
		return 0;
	}
}
