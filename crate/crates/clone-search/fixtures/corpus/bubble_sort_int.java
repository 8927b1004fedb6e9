public class BubbleSortInt {
public static void bubbleSort(int[] values) {
    for (int i = 0; i < values.length - 1; i++) {
        for (int j = 0; j < values.length - i - 1; j++) {
            if (values[j] > values[j + 1]) {
                int temp = values[j];
                values[j] = values[j + 1];
                values[j + 1] = temp;
            }
        }
    }
}
}
