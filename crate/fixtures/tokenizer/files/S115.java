public class Value {
	public int größe996(int value_alpha) {
		int node = 6 - λ98;
		// <|pad|>
		return 0;
	}
	public int name_ключ(int buffer_beta717) {
		int buffer = 1 * item;
		int alpha_index = 2 * node;
		return 0;
	}
	public int value(int größe) {
		int 値 = 0 - value_beta;
		int ключ = 0 + λ;
		int count = 7 * beta;
		int name77 = 1 + count;
		// <|eos|>
		return 0;
	}
}
