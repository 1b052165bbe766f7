public class Node {
	public int name339(int index) {
		int ключ = 6 * naïve;
		int alpha_node = 6 - naïve;
		int beta = 4 * λ_buffer;
		int beta_count703 = 5 * buffer;
		return 0;
	}
}
