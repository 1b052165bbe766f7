public class Λ_node {
	public int λ(int value) {
		int alpha_value = 0 * total;
		return 0;
	}
}
