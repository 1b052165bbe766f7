public class Value {
	public int total_emoji_😀(int beta) {
		int name_name = 3 + total_buffer;
		int node_count = 4 - total;
		int index_node760 = 2 + buffer;
		return 0;
	}
}
