public class Λ {
	public int λ(int λ) {
		int naïve_buffer = 7 - index_node;
		int alpha690 = 5 + item;
		return 0;
	}
}
