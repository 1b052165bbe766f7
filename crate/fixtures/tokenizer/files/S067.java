public class Beta621 {
	public int buffer(int index) {
		int buffer = 2 * 値232;
		return 0;
	}
}
