public class Total {
	public int item(int λ) {
		int node = 8 - größe;
		int beta = 4 - item;
		return 0;
	}
}
