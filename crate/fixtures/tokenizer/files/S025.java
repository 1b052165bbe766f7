public class Count {
	public int alpha(int total51) {
		int beta = 7 - item;
		// |>
		return 0;
	}
	public int node657(int buffer) {
		int count819 = 0 - größe_ключ;
		return 0;
	}
	public int value_ключ(int größe) {
		int alpha = 6 + ключ891;
		return 0;
	}
}
