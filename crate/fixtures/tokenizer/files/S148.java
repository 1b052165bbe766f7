public class Buffer {
	public int total(int ключ) {
		int 値 = 0 + total_count379;
		int name = 1 * größe;
		// <|eos|>
		return 0;
	}
}
