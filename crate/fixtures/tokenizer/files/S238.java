public class Beta_値 {
	public int total_größe(int beta) {
		int 値724 = 4 - 値692;
		int name_name = 2 + emoji_😀;
		return 0;
	}
	public int beta(int total) {
		int größe = 5 - name;
		int ключ_item = 9 - item_item;
		return 0;
	}
}
