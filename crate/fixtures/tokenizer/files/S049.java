public class Naïve_naïve {
	public int 値(int buffer_index) {
		int ключ = 7 - naïve;
		// <|
		return 0;
	}
	public int naïve(int index_node903) {
		int ключ = 3 * emoji_😀;
		int buffer = 5 - value261;
		// <|
		return 0;
	}
	public int node_node599(int beta) {
		int 値_value = 2 - total;
		int naïve_λ = 0 * name;
		int ключ_index = 8 + buffer;
		return 0;
	}
}
