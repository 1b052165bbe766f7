public class Total {
	public int λ(int value) {
		int emoji_😀_値 = 9 + beta;
		int node = 7 - count_node;
		int index_buffer = 9 + alpha_index;
		// <|
		return 0;
	}
	public int total_value(int item) {
		int 値 = 2 + 値;
		int index = 2 - name_buffer;
		return 0;
	}
}
